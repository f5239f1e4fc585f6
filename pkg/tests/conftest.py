import sys
from pathlib import Path

# Lets test modules import the naive oracle as a plain module.
sys.path.insert(0, str(Path(__file__).parent))
