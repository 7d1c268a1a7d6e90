"""Star ontology: parsing, linking and class/behavior search"""
