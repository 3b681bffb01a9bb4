import os

import tomli

with open(os.path.join("pyproject.toml"), mode="rb") as fp:
    pyproject = tomli.load(fp)
PACKAGE_NAME = pyproject["tool"]["poetry"]["name"]
PACKAGE_VERSION = pyproject["tool"]["poetry"]["version"]

APP_DIR = "app"
ARTIFACT_DIR = os.environ.get("ARTIFACT_DIR", "artifacts")

# family name -> parameters written by the fixtures task
FIXTURE_FAMILIES = {
    "cycle": ["m=6"],
    "complete": ["m=4"],
    "subdivided-complete": ["n=4", "k=1"],
    "subdivided-grid": ["n=4"],
    "duality": ["n=4"],
}
