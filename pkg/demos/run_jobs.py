"""Run every job in demos/jobs through the batch driver and print the text reports."""

from pathlib import Path

from gorenstein_families.report import emit, parse_input, run

for path in sorted((Path(__file__).parent / "jobs").glob("*.json")):
    print(f"== {path.name}")
    print(emit(run(parse_input(path.read_text())), "text"))
