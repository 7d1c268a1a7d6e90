"""
Pronoun disambiguation over a commonsense Star ontology
"""
