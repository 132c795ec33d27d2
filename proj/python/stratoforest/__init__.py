from ._stratoforest import *  # noqa: F401,F403
from ._stratoforest import __doc__  # noqa: F401
