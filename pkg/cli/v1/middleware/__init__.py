"""
CLI v1 Middleware Package

Error handling shared by every command.
"""
