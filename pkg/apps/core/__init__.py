"""
Exceptions, input validators and number formatting shared by every app.
"""
