""" mSGD: stochastic gradient descent for linear systems with missing entries.
"""
