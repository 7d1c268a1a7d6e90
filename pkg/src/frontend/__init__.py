"""Tokenizer, segmenter, restricted grammar and SNF adapters"""
