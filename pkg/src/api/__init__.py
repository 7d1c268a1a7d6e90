"""HTTP service, NLU tasks, sessions and question answering"""
