"""Pronoun resolution over the spanning stack"""
