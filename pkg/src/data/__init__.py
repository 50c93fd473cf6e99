"""
Writers and readers for sampled curves (CSV) and the folded card (OBJ).
"""
