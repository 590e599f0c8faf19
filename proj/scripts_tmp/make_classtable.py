import json

# (s, n1, n2) rows of the class-count table
rows = [
    ((1,0,0,0,0),1,1), ((0,0,0,0,1),723,819), ((0,1,0,0,0),459900,68796),
    ((0,0,1,0,0),6540800,2283008), ((1,0,0,0,1),121920,139776), ((1,1,0,0,0),268800,34944),
    ((0,0,0,1,0),249480,137592), ((0,1,0,0,1),2835000,0), ((1,0,1,0,0),14968800,3302208),
    ((2,0,0,0,1),23400,58968), ((2,1,0,0,0),37800,0), ((1,1,0,0,1),1741824,0),
    ((0,0,0,1,1),497280,0), ((0,1,0,1,0),44150400,8805888), ((0,2,0,0,1),10483200,2201472),
    ((1,0,1,0,1),74995200,17611776), ((1,1,1,0,0),67737600,8805888), ((2,0,0,1,0),1881600,2935296),
    ((2,1,0,0,1),604800,0), ((3,0,1,0,0),806400,0), ((4,0,0,0,1),6720,0),
    ((1,0,0,1,1),0,4313088), ((2,1,1,0,0),24883200,539136), ((0,0,0,1,2),272160,0),
    ((0,1,0,1,1),10886400,0), ((0,2,0,1,0),22680000,6604416), ((1,1,1,0,1),342921600,0),
    ((1,2,1,0,0),32659200,0), ((2,0,0,1,1),5443200,6604416), ((2,2,0,0,1),5715360,0),
    ((3,1,1,0,0),5443200,0), ((1,1,0,1,1),77414400,0), ((2,1,1,0,1),19353600,35223552),
    ((0,2,0,1,1),38320128,0), ((4,2,0,0,1),1741824,0), ((0,2,0,1,2),29030400,8805888),
    ((0,4,0,1,0),10886400,0), ((1,0,3,0,1),47174400,0),
    ((1,1,1,1,1),435456000,105670656), ((1,3,1,0,1),101606400,0), ((2,0,0,1,3),1612800,0),
    ((2,0,2,1,0),24192000,13208832), ((2,1,0,1,2),43545600,0), ((2,2,0,1,1),14515200,17611776),
    ((2,4,0,0,1),4112640,0), ((3,0,1,1,1),7257600,0), ((3,3,1,0,0),4838400,0),
    ((4,0,2,0,1),14515200,4402944), ((5,0,1,1,0),3628800,0), ((2,1,1,1,1),0,48771072),
    ((2,2,2,0,1),223948800,11321856), ((4,2,1,1,0),34836480,0), ((1,1,3,1,1),232243200,0),
    ((2,2,2,1,1),154828800,105670656), ((6,2,2,0,1),19353600,0), ((2,4,2,1,0),87091200,0),
    ((4,4,2,0,1),52254720,0), ((2,1,3,1,2),199065600,30191616), ((4,2,1,2,1),0,60383232),
    ((0,4,0,1,6),7257600,0), ((0,6,0,1,4),21772800,0), ((1,2,3,2,1),174182400,0),
    ((2,4,2,1,2),174182400,52835328), ((3,1,3,1,3),261273600,0), ((3,5,1,1,2),87091200,0),
    ((4,2,2,1,3),58060800,52835328), ((4,2,4,1,0),65318400,0), ((6,2,4,0,1),50803200,0),
    ((2,4,2,1,4),149299200,22643712), ((2,4,6,0,1),34836480,0), ((6,4,2,2,1),139345920,0),
    ((2,8,2,1,4),116121600,0), ((4,6,2,1,7),104509440,0), ((8,2,6,1,3),104509440,0),
    ((6,4,6,1,12),69672960,0),
]
assert len(rows) == 75, len(rows)

with open("/root/proj/data/rationalclasses.json") as f:
    rc = {tuple(r["kac"]): r for r in json.load(f)}

order1 = 2**15 * 3**6 * 5**2 * 7
order2 = 2**12 * 3**5 * 7**2 * 13
print("sum n1:", sum(r[1] for r in rows), "expected", order1)
print("sum n2:", sum(r[2] for r in rows), "expected", order2)

out = []
for s, n1, n2 in rows:
    info = rc[s]
    out.append({"kac": list(s), "order": info["order"], "i": info["i"], "n1": n1, "n2": n2})
out.sort(key=lambda r: (r["order"], tuple(r["kac"])))
with open("/root/proj/data/classtable.json", "w") as f:
    json.dump(out, f, indent=1)
print("ok", len(out))
