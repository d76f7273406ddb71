"""
K3 Syzygy - exact invariants, dimension identities and stability certificates for
syzygy and extension bundles on K3 surfaces
"""

__version__ = "0.1.0"
