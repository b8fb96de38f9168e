"""
Configuration package of the simplex billiards project.
"""
