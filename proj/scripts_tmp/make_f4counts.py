import json

rows = [
    ((1,2,0,2),1),((1,2,2,0),5),((1,1,3,2),22),((0,1,3,5),70),((2,0,2,6),28),
    ((0,1,2,4),2),((2,0,2,4),2),((1,1,4,0),11),((0,1,4,3),68),((2,0,3,4),32),
    ((0,1,4,0),1),((2,0,3,2),2),((1,2,0,5),7),((0,1,5,1),49),((2,0,4,2),35),
    ((0,2,1,3),2),((2,1,1,3),3),((1,2,1,3),22),((0,2,0,8),31),((2,0,5,0),12),
    ((0,3,0,2),2),((2,1,2,1),2),((1,2,2,1),13),((0,2,1,6),61),((2,1,0,7),10),
    ((1,0,3,3),1),((2,2,0,2),4),((1,3,0,2),12),((0,2,2,4),92),((2,1,1,5),42),
    ((1,1,1,4),1),((3,0,0,6),1),((1,3,1,0),2),((0,2,3,2),74),((2,1,2,3),46),
    ((1,1,2,2),2),((3,0,2,2),2),((2,0,1,7),2),((0,2,4,0),35),((2,1,3,1),41),
    ((1,2,1,1),2),((3,2,0,0),1),((2,0,2,5),3),((0,3,0,5),26),((2,2,0,4),39),
    ((2,1,0,4),2),((0,0,3,7),3),((2,0,3,3),9),((0,3,1,3),61),((2,2,1,2),34),
    ((2,1,2,0),1),((0,0,4,5),6),((2,0,4,1),5),((0,3,2,1),40),((2,2,2,0),24),
    ((0,0,3,6),1),((0,0,5,3),8),((2,1,0,6),11),((0,4,0,2),28),((2,3,0,1),2),
    ((0,0,4,4),1),((0,0,6,1),4),((2,1,1,4),9),((0,4,1,0),8),((3,0,0,8),5),
    ((0,0,5,2),1),((0,1,0,10),2),((2,1,2,2),21),((1,0,0,12),1),((3,0,1,6),6),
    ((0,0,6,0),1),((0,1,1,8),6),((2,1,3,0),2),((1,0,1,10),4),((3,0,2,4),21),
    ((0,1,1,7),1),((0,1,2,6),19),((2,2,0,3),1),((1,0,2,8),23),((3,0,3,2),13),
    ((0,1,2,5),3),((0,1,3,4),18),((2,2,1,1),8),((1,0,3,6),36),((3,0,4,0),14),
    ((0,1,3,3),6),((0,1,4,2),25),((2,3,0,0),4),((1,0,4,4),50),((3,1,0,5),2),
    ((0,1,4,1),2),((0,1,5,0),4),((3,0,1,5),2),((1,0,5,2),34),((3,1,1,3),21),
    ((0,2,0,6),4),((0,2,0,7),2),((3,0,2,3),2),((1,0,6,0),24),((3,1,2,1),13),
    ((0,2,1,4),4),((0,2,1,5),20),((3,0,3,1),3),((1,1,0,9),6),((3,2,0,2),20),
    ((0,2,2,2),8),((0,2,2,3),21),((3,1,0,4),4),((1,1,1,7),50),((3,2,1,0),2),
    ((0,2,3,0),2),((0,2,3,1),19),((3,1,1,2),5),((1,1,2,5),69),((4,0,0,6),2),
    ((0,3,0,3),3),((0,3,0,4),19),((3,1,2,0),3),((1,1,3,3),86),((4,0,1,4),3),
    ((0,3,1,1),2),((0,3,1,2),10),((4,1,0,2),3),((1,1,4,1),57),((4,0,2,2),7),
    ((0,4,0,0),1),((0,3,2,0),13),((0,0,2,10),4),((1,2,0,6),56),((4,0,3,0),1),
    ((1,0,2,6),2),((0,4,0,1),2),((0,0,3,8),13),((1,2,1,4),72),((4,1,1,1),6),
    ((1,0,3,4),2),((1,0,2,7),4),((0,0,4,6),27),((1,2,2,2),93),((4,2,0,0),1),
    ((1,0,4,2),4),((1,0,3,5),11),((0,0,5,4),26),((1,2,3,0),17),((5,0,0,4),2),
    ((1,1,1,5),4),((1,0,4,3),9),((0,0,6,2),24),((1,3,0,3),18),((5,0,2,0),2),
    ((1,1,2,3),4),((1,0,5,1),11),((0,0,7,0),8),((1,3,1,1),34),((7,0,0,0),1),
    ((1,1,3,1),6),((1,1,0,8),7),((0,1,0,11),1),((1,4,0,0),9),
    ((1,2,0,4),7),((1,1,1,6),15),((0,1,1,9),21),((2,0,0,10),3),
    ((1,2,1,2),3),((1,1,2,4),27),((0,1,2,7),44),((2,0,1,8),9),
]
seen = set()
for lam, c in rows:
    assert lam not in seen, lam
    seen.add(lam)
    w = 2 * (2*lam[0] + 3*lam[1] + 2*lam[2] + lam[3] + 8)
    assert w <= 44, (lam, w)
with open("/root/proj/data/f4counts.json", "w") as f:
    json.dump([{"lambda": list(l), "count": c} for l, c in rows], f, indent=0)
print("f4 count rows:", len(rows))
