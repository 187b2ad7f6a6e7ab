"""Quickstart: exact state distribution of a small three-state system.

A system of four components, each in state 0 (failed), 1 (partial) or
2 (perfect).  Components influence their neighbours: each component's
state distribution is conditioned on the state of the previous one
through a 3x3 row-stochastic matrix.  The chain enters at state 0, so
row 0 of the first matrix is the marginal law of component 1.
"""

from markofn import ComponentChain, SystemSpec, general_distribution

# rows: given previous state 0 / 1 / 2, probabilities of next state 0, 1, 2
wearing_in = (
    (0.30, 0.50, 0.20),
    (0.15, 0.55, 0.30),
    (0.05, 0.35, 0.60),
)
steady = (
    (0.20, 0.45, 0.35),
    (0.10, 0.50, 0.40),
    (0.05, 0.25, 0.70),
)

chain = ComponentChain([wearing_in, steady, steady, steady])

# The system is in state 2 if at least 3 components are perfect, and in
# state 1 or above if at least 2 components are partial or better.
spec = SystemSpec(n=4, k1=2, k2=3)
print(f"system kind: {spec.kind.value}  (k1={spec.k1}, k2={spec.k2})")

dist = general_distribution(chain, spec)
print(f"r0 (failed)    = {dist.r0:.10f}")
print(f"r1 (partial)   = {dist.r1:.10f}")
print(f"r2 (perfect)   = {dist.r2:.10f}")
print(f"R1 = r1 + r2   = {dist.R1:.10f}")
print(f"R2 = r2        = {dist.R2:.10f}")
