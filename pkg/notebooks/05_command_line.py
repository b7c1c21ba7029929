# %% [markdown]
# # The command line
#
# Everything above is reachable from the `qschubert` command. Here it is
# driven in-process through `run`, which returns the exit code.

# %%
from qschubert.cli import run

run(["qprod", "--k", "2", "--n", "4", "[2,1]", "[2,1]"])
run(["qprod", "--k", "2", "--n", "4", "[2,1]", "[2,1]", "--format", "json"])
run(["spectrum", "--k", "2", "--n", "4", "--paper-example"])
run(["psi", "--k", "4", "--n", "8", "[3,2,1]"])

# %% [markdown]
# Verification suites print one line per check and exit nonzero on failure.

# %%
code = run(["verify", "t1", "--k", "3", "--n", "6"])
print("exit", code)
