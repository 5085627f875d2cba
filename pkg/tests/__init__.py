import os
import sys

# Run the suite against the working tree, not an installed copy.
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
