//! Holds the workspace-wide acceptance suite under `tests/`.
