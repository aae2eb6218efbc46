from .fixtures import FIXTURES_PATH
from .fixtures import fixture_names
from .fixtures import fixture_path
from .fixtures import load_fixture
from .fixtures import diamond_chain
from .fixtures import decide
