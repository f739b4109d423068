# Which profile pairs admit continuous spectrum-shrinking or -preserving maps?
from specshrink import decide_all_shrink_preserving, decide_preserve, decide_shrink

cases = [
    ((2,), (4, 6)),      # divisibility
    ((1, 2), (3,)),      # 3 = 1 + 2 = 1 + 1 + 1
    ((2, 3), (1,)),      # nothing fits in a 1x1 block
    ((1, 3), (2,)),      # shrinking yes, but the 3-block can never be used
]
for ks, ms in cases:
    s = decide_shrink(ks, ms)
    p = decide_preserve(ks, ms)
    print(f"{ks} -> {ms}: shrink {s.verdict} {s.witness}, preserve {p.verdict} {p.witness}")

# Is every shrinking map automatically preserving?  Three possible answers.
print(decide_all_shrink_preserving((1, 2), (3,), a_is_sma=True).to_json())
print(decide_all_shrink_preserving((2, 3), (2, 3), a_is_sma=True).to_json())
print(decide_all_shrink_preserving((2, 3), (2, 3), a_is_sma=False).to_json())
