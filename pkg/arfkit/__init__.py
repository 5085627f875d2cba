# Intent: users should be able to type "from arfkit import parse".
from .documents import parse, serialize

assert parse and serialize  # silence pyflakes
