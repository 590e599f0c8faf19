import json, re

with open("/root/proj/paper.md") as f:
    text = f.read()

def parse_matrix(snippet, n=27):
    rows = []
    for piece in snippet.split("\\\\"):
        line = piece.strip().split("\n")[-1].strip()
        if not line or "&" not in line:
            continue
        parts = [p.strip() for p in line.split("&")]
        vals = []
        ok = True
        for p in parts:
            m = re.fullmatch(r"-?\d+", p)
            if not m:
                ok = False
                break
            vals.append(int(p))
        if ok and len(vals) == n:
            rows.append(vals)
    return rows

# Gram matrix figure
gram_start = text.index("scalemath{0.75}{\\begin{matrix}")
gram_end = text.index("\\end{matrix}", gram_start)
gram = parse_matrix(text[gram_start:gram_end])
assert len(gram) == 27, len(gram)
for row in gram:
    assert len(row) == 27
# symmetry check
for i in range(27):
    for j in range(27):
        assert gram[i][j] == gram[j][i], (i, j)
assert gram[0][0] == 4 and gram[0][3] == -3  # spot pins from the text

s1_start = text.index("sigma_{1}=\\left(\\scalemath{0.7}{\\begin{matrix}")
s1_end = text.index("\\end{matrix}", s1_start)
sigma1 = parse_matrix(text[s1_start:s1_end])
assert len(sigma1) == 27, len(sigma1)

s2_start = text.index("sigma_{2}=\\left(\\scalemath{0.7}{\\begin{matrix}")
s2_end = text.index("\\end{matrix}", s2_start)
sigma2 = parse_matrix(text[s2_start:s2_end])
assert len(sigma2) == 27, len(sigma2)

with open("/root/proj/data/gram_E.json", "w") as f:
    json.dump({"gram": gram}, f, indent=0)
with open("/root/proj/data/generators.json", "w") as f:
    json.dump({"sigma1": sigma1, "sigma2": sigma2}, f, indent=0)
print("gram and generators extracted ok")
