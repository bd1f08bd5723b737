"""Scripts with known accept/reject outcomes, shared by the DSL tests and the
acceptance harness.  Each entry is (script, None) for a valid script or
(script, (error class name, line)) for a rejected one."""

BELL = """\
# maximally entangled in both sectors
model born
register r amps (0.7071067811865476,0) (0,0) (0,0) (0.7071067811865476,0) memb 0.7071067811865476 0 0 0.7071067811865476
report probs
report memb
report concurrence
"""

BASE = """\
model born
qubit q0 amps (1,0) (0,0) memb 1 0
qubit q1 pm 1 0
gate H/X on q0
pair q0 q1
gate CNOT/I on q0 q1
report concurrence
"""

VALID = [
    "model born\nqubit q0 amps (1,0) (0,0) memb 1 0\nreport probs\n",
    "qubit q0 pm 0.5 0.5\ngate H/X on q0\nreport memb\n",
    "",
    "# only a comment\n\n",
    "model arc\nqubit q pm 0.25 0.75\nreport memb",
    "qubit a bloch 1.5707963267948966 0 1.5707963267948966\nreport expect\nreport density\n",
    "qubit a amps (0.6, 0) (0, 0.8) memb 0.28 0.96  # trailing comment\nproject P0 on a\nreport probs\n",
    "qubit a amps (0.6,0) (0,0.8) memb 0.6 0.8\nproject Q1mu on a\ngate H on a\nreport probs\n",
    "model circle-square\nqubit a amps (1,0) (0,0) memb 0.6 0.8\nreport memb\n",
    BELL,
    BASE,
    "qubit x pm 1 0\nqubit y pm 0 1\npair x y\ngate H on x\ngate I/SWAP on x y\nreport probs\n",
    "qubit x pm 1 0\nqubit y pm 1 0\npair x y\ngate NOT/NOT on y\nreport memb\nreport concurrence\n",
    "qubit q0 pm 1/4 3/4\ngate Z/Z on q0\ngate X/I on q0\nreport probs\n",
    "qubit q0 amps (1e-0,0) (0,0) memb 1 0\nreport probs\n",
    "   qubit   q0   pm   .5   .5   \n\treport probs\n",
]

INVALID = [
    ("gate H on q9\n", ("SemanticError", 1)),
    ("model born\nqubit q0 pm 0.5\nreport probs\n", ("ScriptSyntaxError", 2)),
    ("qubit q0 pm 0.5 0.5\nqubit q0 pm 1 0\n", ("SemanticError", 2)),
    ("qubit a pm 1 0\nqubit b pm 1 0\nqubit c pm 1 0\n", ("SemanticError", 3)),
    ("qubit a pm 1 0\ngate CNOT on a\n", ("SemanticError", 2)),
    ("qubit a pm 1 0\nqubit b pm 1 0\ngate CNOT on a b\n", ("SemanticError", 3)),
    ("qubit a pm 1 0\nqubit b pm 1 0\npair a b\ngate CNOT on b a\n", ("SemanticError", 4)),
    ("qubit a pm 1 0\ngate H/Y on a\n", ("SemanticError", 2)),
    ("qubit a pm 1 0\ngate H/CNOT on a\n", ("SemanticError", 2)),
    ("qubit a pm 1 0\ngate T on a\n", ("SemanticError", 2)),
    ("qubit a pm 1 0\nproject P2 on a\n", ("SemanticError", 2)),
    ("qubit a pm 1 0\nreport concurrence\n", ("SemanticError", 2)),
    ("report entropy\n", ("ScriptSyntaxError", 1)),
    ("model gauss\n", ("SemanticError", 1)),
    ("model born\nmodel arc\n", ("SemanticError", 2)),
    ("qubit a amps (1,0 (0,0) memb 1 0\n", ("ScriptSyntaxError", 1)),
    ("qubit a amps (1,0) (0,0) 1 0\n", ("ScriptSyntaxError", 1)),
    ("\n\n# c\nqubit a pm 1/0 1\n", ("ScriptSyntaxError", 4)),
    ("qubit a pm 1 0 $\n", ("ScriptSyntaxError", 1)),
    ("qubit a pm 1 0\nmeasure a\n", ("ScriptSyntaxError", 2)),
    ("qubit a pm 1 0\ngate H a\n", ("ScriptSyntaxError", 2)),
    ("qubit a pm 1 0\ngate H on a extra\n", ("SemanticError", 2)),
    ("qubit a pm 1 0\npair a a\n", ("SemanticError", 2)),
    ("qubit a pm 1 0\nqubit b pm 1 0\npair a b\nproject P0 on a\n", ("SemanticError", 4)),
    ("register r amps (1,0) (0,0) (0,0) (0,0) memb 1 0 0 0\nqubit c pm 1 0\n", ("SemanticError", 2)),
    ("register r amps (1,0) (0,0) (0,0) memb 1 0 0 0\n", ("ScriptSyntaxError", 1)),
    ("qubit a pm 1e999 0\n", ("ScriptSyntaxError", 1)),
    ("qubit a bloch 1 2\n", ("ScriptSyntaxError", 1)),
    ("qubit model pm 1 0\n", ("SemanticError", 1)),
]


def mutations():
    """Single-line corruptions of BASE with the line that must be reported."""
    lines = BASE.splitlines()
    edits = {
        2: "qubit q0 amps (1,0) (0,0) memb 1",
        3: "qubit q1 pm 1/2 1/2 1/2",
        4: "gate H/X q0",
        5: "pair q0",
        6: "gate CNOT/I on q1 q0",
        7: "report concurrency",
    }
    kinds = {2: "ScriptSyntaxError", 3: "ScriptSyntaxError", 4: "ScriptSyntaxError",
             5: "ScriptSyntaxError", 6: "SemanticError", 7: "ScriptSyntaxError"}
    out = []
    for n, text in edits.items():
        mutated = list(lines)
        mutated[n - 1] = text
        out.append(("\n".join(mutated) + "\n", (kinds[n], n)))
    return out


def corpus():
    return [(s, None) for s in VALID] + INVALID + mutations()
