__title__ = """ytc"""
__description__ = """Exact computations on t-Young complexes and squarefree powers of t-path ideals: homotopy types, homology, Hochster tables and closed-form invariants cross-checked against brute-force oracles"""
__url__ = """https://github.com/somenetworking/ytc"""
__version__ = """0.3.0"""
__author__ = """somenetworking"""
__author_email__ = """andrewshea06@gmail.com"""
__license__ = """GPL-3.0"""
