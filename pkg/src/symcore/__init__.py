# Symmetric polynomials, partitions and Schur functions
