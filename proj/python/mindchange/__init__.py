try:
    from ._mindchange import *  # noqa: F401,F403  (installed layout)
except ImportError:  # build-tree layout: the extension sits next to the package
    from _mindchange import *  # noqa: F401,F403
