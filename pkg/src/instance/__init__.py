"""Instance model, behavior class application and XML export"""
