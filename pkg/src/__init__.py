"""Operad characteristic workbench"""
