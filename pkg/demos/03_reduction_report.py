"""One full reduction report: splitting of p and the BT1 type of A[p].

Run:  python demos/03_reduction_report.py
"""
from cmkraft.cm import labelled_cm_type_classes, standard_config
from cmkraft.tables import classify

cfg = standard_config("E8semiS3")
G = cfg.G
classes = labelled_cm_type_classes(cfg)

for s in ("(0,0,0;1)", "(1,1,1;1)", "(0,0,0;s)", "(1,0,1;s)", "(0,0,1;s)", "(1,0,0;t)"):
    print(f"sigma = {s}")
    for label, orbit in classes:
        rep = classify(cfg, G.element(s), orbit[0], label)
        print(f"   ({label}) {rep.line()}")

# the same thing as JSON, for scripting
import json

label, orbit = classes[0]
print(json.dumps(classify(cfg, G.element("(0,0,0;s)"), orbit[0], label).to_dict(), indent=1))
