from ._ccfc import *  # noqa: F401,F403
