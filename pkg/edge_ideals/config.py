import os

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Colon-method box cap; the only setting that may be overridden from the environment
MAX_BOX_POINTS = int(os.getenv("EDGE_IDEALS_MAX_BOX", "1000000"))

MAX_AMBIENT_VERTICES = 20
MAX_LATTICE_POINTS = 500000
EXPONENT_LIMIT = 2 ** 16

DEFAULT_SCAN_T = 3
SCHEMA_VERSION = "1.0"
