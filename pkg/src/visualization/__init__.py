"""
SVG documents, the card template, curve figures and matplotlib previews.
"""
