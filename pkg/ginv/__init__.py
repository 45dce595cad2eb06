"""Exact group inverses of matrices whose digraphs lie in class D."""

APP_VERSION = "2026-10-18"
SCHEMA_VERSION = "1"
