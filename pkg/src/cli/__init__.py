"""Command-line front end, serialization and self-verification"""
