import json

# nonzero d(lambda) for 2 l1 + 3 l2 + 2 l3 + l4 <= 13, transcribed row-wise
nonzero = [
    ((0,0,0,2),1),((0,0,1,9),7),((0,1,1,7),7),((0,0,0,13),8),((2,0,4,1),13),
    ((0,0,0,3),1),((0,0,2,7),6),((0,1,2,5),9),((0,0,1,11),15),((2,1,0,6),16),
    ((0,0,0,4),1),((0,0,3,5),6),((0,1,3,3),14),((0,0,2,9),20),((2,1,1,4),17),
    ((0,0,2,0),1),((0,0,4,3),4),((0,1,4,1),4),((0,0,3,7),27),((2,1,2,2),25),
    ((0,0,0,5),1),((0,0,5,1),1),((0,2,0,6),11),((0,0,4,5),34),((2,1,3,0),8),
    ((0,0,1,3),1),((0,1,0,8),2),((0,2,1,4),9),((0,0,5,3),30),((2,2,0,3),4),
    ((0,0,0,6),3),((0,1,1,6),3),((0,2,2,2),15),((0,0,6,1),14),((2,2,1,1),9),
    ((0,0,2,2),1),((0,1,2,4),4),((0,2,3,0),2),((0,1,0,10),11),((2,3,0,0),6),
    ((0,0,0,7),1),((0,1,3,2),3),((0,3,0,3),3),((0,1,1,8),23),((3,0,0,7),1),
    ((0,0,1,5),1),((0,1,4,0),1),((0,3,1,1),3),((0,1,2,6),39),((3,0,1,5),9),
    ((0,0,2,3),1),((0,2,0,5),1),((0,4,0,0),6),((0,1,3,4),44),((3,0,2,3),7),
    ((0,0,0,8),4),((0,2,1,3),3),((1,0,0,10),3),((0,1,4,2),37),((3,0,3,1),8),
    ((0,0,1,6),1),((0,2,2,1),1),((1,0,1,8),7),((0,1,5,0),13),((3,1,0,4),12),
    ((0,0,2,4),1),((0,3,0,2),2),((1,0,2,6),10),((0,2,0,7),11),((3,1,1,2),7),
    ((0,0,4,0),2),((1,0,0,9),1),((1,0,3,4),11),((0,2,1,5),32),((3,1,2,0),8),
    ((0,0,0,9),4),((1,0,1,7),3),((1,0,4,2),8),((0,2,2,3),36),((4,0,0,5),2),
    ((0,0,1,7),2),((1,0,2,5),2),((1,0,5,0),4),((0,2,3,1),26),((4,0,1,3),3),
    ((0,0,2,5),1),((1,0,3,3),3),((1,1,0,7),2),((0,3,0,4),21),((4,0,2,1),2),
    ((0,0,3,3),2),((1,0,4,1),1),((1,1,1,5),9),((0,3,1,2),21),((4,1,0,2),4),
    ((0,1,3,0),1),((1,1,0,6),3),((1,1,2,3),8),((0,3,2,0),14),((4,1,1,0),1),
    ((0,3,0,0),1),((1,1,1,4),2),((1,1,3,1),9),((0,4,0,1),5),((5,0,1,1),1),
    ((1,1,0,4),1),((1,1,2,2),4),((1,2,0,4),8),((1,0,0,11),3),((5,1,0,0),3),
    ((3,1,0,0),1),((1,2,1,1),2),((1,2,1,2),5),((1,0,1,9),13),
    ((0,0,0,10),5),((1,3,0,0),1),((1,2,2,0),5),((1,0,2,7),20),
    ((0,0,1,8),4),((2,0,0,7),1),((1,3,0,1),1),((1,0,3,5),32),
    ((0,0,2,6),6),((2,0,1,5),2),((2,0,0,8),5),((1,0,4,3),26),
    ((0,0,4,2),3),((2,0,2,3),1),((2,0,1,6),4),((1,0,5,1),21),
    ((0,0,5,0),1),((2,0,3,1),1),((2,0,2,4),10),((1,1,0,8),18),
    ((0,1,1,5),1),((2,1,0,4),2),((2,0,3,2),4),((1,1,1,6),27),
    ((0,1,3,1),1),((2,1,1,2),1),((2,0,4,0),5),((1,1,2,4),46),
    ((0,2,0,4),1),((2,1,2,0),1),((2,1,1,3),5),((1,1,3,2),31),
    ((0,2,2,0),1),((3,0,1,3),1),((2,1,2,1),2),((1,1,4,0),20),
    ((1,0,0,8),1),((3,1,0,2),1),((2,2,0,2),8),((1,2,0,5),10),
    ((1,0,1,6),1),((0,0,0,12),13),((3,0,0,6),4),((1,2,1,3),28),
    ((1,0,2,4),1),((0,0,1,10),6),((3,0,1,4),3),((1,2,2,1),16),
    ((1,0,3,2),1),((0,0,2,8),15),((3,0,2,2),3),((1,3,0,2),18),
    ((1,2,0,2),1),((0,0,3,6),15),((3,0,3,0),2),((1,3,1,0),2),
    ((2,0,0,6),2),((0,0,4,4),15),((3,2,0,0),2),((2,0,0,9),4),
    ((2,0,2,2),1),((0,0,5,2),4),((4,0,0,4),3),((2,0,1,7),12),
    ((2,2,0,0),1),((0,0,6,0),11),((4,0,2,0),2),((2,0,2,5),16),
    ((0,0,0,11),5),((0,1,0,9),2),((6,0,0,0),3),((2,0,3,3),21),
]
seen = set()
for lam, dval in nonzero:
    assert lam not in seen, lam
    seen.add(lam)
    assert 2*lam[0] + 3*lam[1] + 2*lam[2] + lam[3] <= 13, lam
print("nonzero rows:", len(nonzero))
with open("/root/proj/data/nonzero_dims.json", "w") as f:
    json.dump([{"lambda": list(l), "d": v} for l, v in nonzero], f, indent=0)

# dim V_{n w4}^{Gamma_i} for n <= 40
a1 = [
    (1,0,0),(2,1,0),(3,1,0),(4,1,0),(5,1,0),(6,2,1),(7,1,0),(8,3,1),(9,3,1),(10,4,1),
    (11,4,1),(12,8,5),(13,6,2),(14,12,8),(15,13,8),(16,20,18),(17,22,22),(18,37,58),(19,39,63),(20,67,150),
    (21,83,209),(22,130,413),(23,169,590),(24,280,1138),(25,368,1629),(26,601,2915),(27,835,4253),(28,1323,7161),
    (29,1868,10455),(30,2919,16962),(31,4112,24425),(32,6294,38234),(33,8904,54760),(34,13284,82989),
    (35,18664,117447),(36,27332,173760),(37,38024,242971),(38,54627,351485),(39,75354,486013),(40,106332,689219),
]
# dim V_{n w3}^{Gamma_i} for n <= 30
g2 = [
    (1,0,0),(2,1,0),(3,0,0),(4,1,1),(5,0,1),(6,4,7),(7,2,14),(8,32,136),(9,84,583),(10,497,2936),
    (11,1765,11764),(12,7111,46299),(13,24173,159701),(14,80166,526081),(15,241776,1594526),
    (16,699558,4607562),(17,1899450,12528178),(18,4951537,32636950),(19,12298529,81088431),
    (20,29444006,194120684),(21,67821302,447181025),(22,151304284,997568542),(23,326873722,2155210696),
    (24,686811782,4528418428),(25,1404333622,9259307898),(26,2802604042,18478677233),
    (27,5463354204,36021961176),(28,10425639768,68740584631),(29,19491910968,128517811865),
    (30,35762551274,235797459916),
]
with open("/root/proj/data/theta_a1.json", "w") as f:
    json.dump([{"n": n, "d1": d1, "d2": d2} for n, d1, d2 in a1], f, indent=0)
with open("/root/proj/data/theta_g2.json", "w") as f:
    json.dump([{"n": n, "d1": str(d1), "d2": str(d2)} for n, d1, d2 in g2], f, indent=0)
print("theta tables ok")
