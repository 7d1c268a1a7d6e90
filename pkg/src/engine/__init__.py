"""Semantic engine: spanning stack, pronoun features and the document driver"""
