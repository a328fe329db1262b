# Invariant suite run by the verify command
