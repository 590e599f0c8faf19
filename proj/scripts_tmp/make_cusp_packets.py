import json

# Counts readable from the paper: packet-table superscripts Delta^{(k)} and
# the zero counts asserted in the weight-36 elimination argument.
cusp = []
def add(fam, weights, count, prov):
    cusp.append({"family": fam, "weights": list(weights), "count": count, "provenance": prov})

g2_nonzero = {
    (24,16,8):1, (26,20,6):1, (26,16,10):1, (28,20,8):1, (28,18,10):1,
    (30,24,6):2, (30,22,8):1, (30,20,10):1, (30,16,14):1,
    (32,26,6):2, (32,24,8):2, (32,22,10):1, (32,20,12):2,
    (34,28,6):3, (34,26,8):3, (34,24,10):5, (34,20,14):2,
}
for wts, c in sorted(g2_nonzero.items()):
    add("G2", wts, c, "packet tables, G2 theta entries")

so9_nonzero = {
    (32,16,14,6):1, (30,20,10,8):1, (34,24,10,4):1, (34,20,14,4):1,
    (34,22,10,6):1, (34,18,14,6):1, (34,20,10,8):1, (32,26,8,6):1,
    (32,24,10,6):1, (32,22,12,6):1, (32,20,14,6):1, (30,24,10,8):2,
    (30,20,14,8):1,
}
for wts, c in sorted(so9_nonzero.items()):
    add("SO9", wts, c, "packet tables, Spin(9) entries")

for wts in [(26,24,18,4), (32,18,12,10), (36,14,8,6)]:
    add("SO9", wts, 0, "weight-36 elimination: no such orthogonal forms")
    add("SO8", wts, 0, "weight-36 elimination: no such orthogonal forms")

for wts, c in [((19,7),1), ((21,13),1), ((21,9),1), ((21,5),1)]:
    add("Sp4", wts, c, "genus-2 table, vector-valued Siegel forms")
for wts, c in [((23,13,5),1), ((25,13,7),1)]:
    add("Sp6", wts, c, "genus-3 table")

with open("/root/proj/data/cuspcounts.json", "w") as f:
    json.dump(cusp, f, indent=1)
print("cusp counts:", len(cusp))

# Non-stable packet rows for all weights with motivic weight <= 36.
# Shape ids refer to the catalog; weights are (a1 list, tuple list).
P = []
def row(lam, shape, a1, tup, count):
    P.append({"lambda": list(lam), "shape": shape, "a1": list(a1), "tuple": list(tup), "count": count})

row((0,0,0,0), "pA1_i", [], [], 1)
row((0,0,0,0), "sp3a1_i", [11], [], 1)
row((0,0,0,2), "sp3a1_i", [15], [], 1)
row((0,0,0,3), "sp3a1_i", [17], [], 1)
row((0,0,0,4), "sp3a1_i", [19], [], 1)
row((0,0,2,0), "so3d_i", [11], [], 1)
row((0,0,0,5), "sp3a1_i", [21], [], 1)
row((0,0,1,3), "a1g2_i", [], [24,16,8], 1)
row((0,0,0,6), "sp3a1_i", [23], [], 2)
row((0,0,0,6), "a1g2_i", [], [26,20,6], 1)
row((0,0,2,2), "a1g2_i", [], [26,16,10], 1)
row((0,0,0,7), "sp3a1_i", [25], [], 1)
row((0,0,1,5), "a1g2_i", [], [28,20,8], 1)
row((0,0,2,3), "a1g2_i", [], [28,18,10], 1)
row((0,0,0,8), "sp3a1_i", [27], [], 2)
row((0,0,0,8), "a1g2_i", [], [30,24,6], 2)
row((0,0,1,6), "a1g2_i", [], [30,22,8], 1)
row((0,0,2,4), "a1g2_i", [], [30,20,10], 1)
row((0,0,4,0), "so3d_i", [15], [], 1)
row((0,0,4,0), "a1g2_i", [], [30,16,14], 1)
row((0,0,0,9), "sp3a1_i", [29], [], 2)
row((0,0,0,9), "a1g2_i", [], [32,26,6], 2)
row((0,0,1,7), "a1g2_i", [], [32,24,8], 2)
row((0,0,2,5), "a1g2_i", [], [32,22,10], 1)
row((0,0,3,3), "a1g2_i", [], [32,20,12], 2)
row((0,1,3,0), "spin9_i", [], [32,16,14,6], 1)
row((0,3,0,0), "spin33_i", [11], [], 1)
row((1,1,0,4), "spin9_i", [], [30,20,10,8], 1)
row((3,1,0,0), "a1a1sp2_i", [15], [19,7], 1)
row((0,0,0,10), "sp3a1_i", [31], [], 2)
row((0,0,0,10), "a1g2_i", [], [34,28,6], 3)
row((0,0,1,8), "a1a1sp2_ii", [15,11], [21,13], 1)
row((0,0,1,8), "a1g2_i", [], [34,26,8], 3)
row((0,0,2,6), "a1g2_i", [], [34,24,10], 5)
row((0,0,2,6), "spin9_i", [], [34,24,10,4], 1)
row((0,0,4,2), "a1g2_i", [], [34,20,14], 2)
row((0,0,4,2), "spin9_i", [], [34,20,14,4], 1)
row((0,0,5,0), "so3d_i", [17], [], 1)
row((0,1,1,5), "spin9_i", [], [34,22,10,6], 1)
row((0,1,3,1), "spin9_i", [], [34,18,14,6], 1)
row((0,2,0,4), "spin9_i", [], [34,20,10,8], 1)
row((0,2,2,0), "a1a1sp2_i", [15], [21,13], 1)
row((1,0,0,8), "spin9_i", [], [32,26,8,6], 1)
row((1,0,1,6), "spin9_i", [], [32,24,10,6], 1)
row((1,0,2,4), "spin9_i", [], [32,22,12,6], 1)
row((1,0,3,2), "spin9_i", [], [32,20,14,6], 1)
row((2,0,0,6), "spin9_i", [], [30,24,10,8], 2)
row((2,0,2,2), "spin9_i", [], [30,20,14,8], 1)
row((2,2,0,0), "a1a1sp2_i", [15], [21,9], 1)

with open("/root/proj/data/packets.json", "w") as f:
    json.dump(P, f, indent=1)
print("packet rows:", len(P))
