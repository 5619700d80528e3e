#! /usr/bin/env python
# -*- encoding: utf-8 -*-
# vim:fenc=utf-8:

"""
Exact Dedekind sums, mean square values of Dirichlet L-functions at 1
averaged over the odd characters trivial on a subgroup, and the numerical
oracles which check them.
"""
