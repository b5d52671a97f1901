import sys
from pathlib import Path

# lets test modules share strategies via plain imports
sys.path.insert(0, str(Path(__file__).parent))
