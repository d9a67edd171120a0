"""
h*-polynomials of extended root polytopes of directed graphs.

This package provides:
- Directed multigraphs with stable edge ids, minors and reduction
- Dissecting tree sets from weight-induced circuit signatures
- h* via internal semi-passivity, checked against a brute-force Ehrhart oracle
- Deletion/contraction monotonicity reports and equality predicates
- A Tutte polynomial cross-oracle and exhaustive small-graph verification
"""
