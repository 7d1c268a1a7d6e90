"""Semantic Normal Form: predicate expressions and their notation"""
