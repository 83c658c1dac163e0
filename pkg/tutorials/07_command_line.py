"""
The blockverify command line
============================

The same checks are available as a console script.  This walk-through calls
the entry point in-process; from a shell, drop ``main([...])`` and type
``blockverify check s10_p2.json`` and so on.
"""

import io

from blockverify.cli import main

# %%
# Exit status 0 means nothing unexpected failed.  Documented failures are
# annotated, and any new failure of a conjectured or open bound exits 2.
print("exit", main(["check", "s10_p2.json"]))

# %%
# JSON output, one object per record.
print("exit", main(["check", "a5_p2.json", "--report", "json"]))

# %%
# Brauer trees given on the command line.
main(["tree", "--star", "3", "2", "--degrees", "1,1,1"])

# %%
# A tame sweep.
main(["tame", "D3K", "--defect-max", "2^6"])

# %%
# power writes a block record to stdout, and check reads one from stdin.
buf = io.StringIO()
main(["power", "a5_p2.json", "3"], out=buf)
main(["check", "-"], stdin=io.StringIO(buf.getvalue()))
