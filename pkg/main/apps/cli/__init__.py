# -*- coding: utf-8 -*-

import sys

from .app import main

__title__ = "Prime path coverage from the command line"


def run():
    sys.exit(main())
