"""Embedded commonsense reasoning: WEST/EAST generate-and-test"""
