"""Logging, worker pool, configuration loading and argument validation"""
