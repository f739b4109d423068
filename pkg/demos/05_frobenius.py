# Block sizes beyond the Frobenius number are always reachable.
from specshrink import all_solutions, eigenvalue_selection_exists, frobenius_number

for ks in [(2, 3), (3, 5), (4, 7), (6, 10, 15)]:
    g = frobenius_number(ks)
    reach = "".join("#" if all_solutions(ks, m).exists else "." for m in range(g + 8))
    print(f"{ks}: g = {g}   {reach}")

# a continuous eigenvalue selection exists exactly when some block has size 1
for ks in [(1, 1), (2,), (2, 3, 1)]:
    print(ks, eigenvalue_selection_exists(ks))
