"""Check the endomorphism-rank identity as an exact polynomial identity."""

from rouquier import block_context, verify_rank_identity
from rouquier.symbols import parse_symbol

ctx = block_context("so-odd", 7, 3, 1)
report = verify_rank_identity(ctx)
print("so-odd q=7 p=3 w=1")
print("lhs:\n" + report.lhs.dump())
print("rhs:\n" + report.rhs.dump())
print("equal:", report.equal)

ctx = block_context("cso-plus", 3, 13, 1, parse_symbol("2,5|2,5"))
print("\ndegenerate core 2,5|2,5:", verify_rank_identity(ctx).equal)
mutated = verify_rank_identity(ctx, canonicalize=False)
print("with t and t-bar given separate variables:", mutated.equal)
