# Grassmannian and flag quotient rings
