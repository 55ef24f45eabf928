"""
The expression calculator
=========================

The same parser and formatter sit behind the ``gacalc`` command.  This
script drives them from Python and then calls the command line entry point.
"""

# %%
from gacalc import evaluate, format_multivector, lex, parse

text = "(e[-1]*e[-2])^2 + 3*e[0]"
print(lex(text))
tree = parse(text)
print(tree)
print(format_multivector(evaluate(tree)))

# %%
# Formatting is canonical and parses back to the same value.
value = evaluate(parse("e[2]*e[1] - 0.25 + e[0]*e[-1]"))
text = format_multivector(value)
print(text, evaluate(parse(text)) == value)

# %%
# Errors point at a byte offset.
from gacalc import GAError

for bad in ("e[0] e[1]", "e[1,1]", "e[0]^-1"):
    try:
        parse(bad)
    except GAError as exc:
        print(f"{bad!r}: {exc}")

# %%
# The command line, in-process.
from gacalc.cli import run_cli

run_cli(["eval", "--grades", "(1 + e[0]) * (e[0] + e[1])"])
run_cli(["eval", "--check-oracle", "e[3]*e[1]*e[3]"])
run_cli(["table", "1,1"])
print("exit status:", run_cli(["check", "1,0", "e[1]"]))
