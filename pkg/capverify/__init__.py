"""
    capverify
    Rigorous interval enclosures and computer-assisted proof certificates
"""

__version__ = '0.1.0'
