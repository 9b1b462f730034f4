# -*- coding: utf-8 -*-
# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

__author__ = """The vtlink developers"""
__version__ = "0.1.0"


from . import cayley, data, elimination, graphs, permutations, random, structure
