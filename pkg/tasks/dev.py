import os

from invoke import task

from .config import APP_DIR, ARTIFACT_DIR, FIXTURE_FAMILIES, PACKAGE_NAME, PACKAGE_VERSION


def manage(context, command: str, warn: bool = False):
    return context.run(f"python {APP_DIR}/manage.py {command}", warn=warn)


@task(help={"pattern": "Only run tests whose node id matches this expression."})
def test(context, pattern=""):
    """Run the test suite."""
    print(f"Testing {PACKAGE_NAME} {PACKAGE_VERSION}")
    selector = f" -k {pattern!r}" if pattern else ""
    context.run(f"pytest{selector}")


@task()
def fixtures(context):
    """Write the witness families as edge lists into the artifact directory."""
    os.makedirs(ARTIFACT_DIR, exist_ok=True)
    for family, params in FIXTURE_FAMILIES.items():
        out = os.path.join(ARTIFACT_DIR, f"{family}.txt")
        manage(context, f"generate {family} {' '.join(params)} --out {out}")


@task(pre=[fixtures], help={"heuristic": "Use min-fill above the exact solver limit."})
def pipeline(context, heuristic=False):
    """Run the pipeline on every fixture except the duality graph; exit non-zero on any failure."""
    flag = " --heuristic" if heuristic else ""
    failed = []
    for family in FIXTURE_FAMILIES:
        if family == "duality":
            continue
        graph = os.path.join(ARTIFACT_DIR, f"{family}.txt")
        trace = os.path.join(ARTIFACT_DIR, f"{family}.trace.json")
        result = manage(context, f"pipeline {graph} --trace {trace}{flag}", warn=True)
        if result.failed:
            failed.append(family)
    if failed:
        raise SystemExit(f"Pipeline failed for: {', '.join(failed)}")
