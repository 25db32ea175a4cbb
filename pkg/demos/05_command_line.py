# # The command line
#
# Every computation is also a subcommand with JSON in and out.  Here the
# same calls run in-process through lmalg.cli.run.

import json

from lmalg.cli import run

calls = [
    ["steinitz", "mul", "12", "18"],
    ["gclifford", "wedderburn", "--l", "2", "--m", "2"],
    ["chain", "equiv", json.dumps({"sizes": [2], "tail": 2}), json.dumps({"sizes": [4], "tail": 4})],
    ["clifford", "structure", json.dumps({"diag": [1, -1, 1, -1]})],
    ["gclifford", "wedderburn", "--l", "2", "--m", "4"],  # needs sqrt(-1): exit status 1
    ["steinitz", "mul", "twelve", "18"],  # malformed JSON: exit status 2
]
for argv in calls:
    print("$ lmalg " + " ".join(argv))
    print("exit", run(argv))
