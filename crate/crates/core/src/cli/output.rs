use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::CliError;

/// Environment variable naming the directory for relative output paths.
pub const OUTPUT_DIR_VAR: &str = "CUTNUM_OUTPUT_DIR";

/// Resolves a relative output path against [`OUTPUT_DIR_VAR`] when set.
pub fn resolve_output_path(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Some(dir) = std::env::var_os(OUTPUT_DIR_VAR).filter(|d| !d.is_empty()) {
            return PathBuf::from(dir).join(path);
        }
    }
    path.to_path_buf()
}

/// Pretty JSON with a trailing newline. Field order follows the type
/// definitions, so equal values give identical bytes.
pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomically(path: &Path, contents: &str) -> Result<PathBuf, CliError> {
    let target = resolve_output_path(path);
    let dir = match target.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    std::fs::create_dir_all(&dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(|e| CliError::Io(e.to_string()))?;
    tmp.write_all(contents.as_bytes())
        .and_then(|_| tmp.as_file().sync_all())
        .map_err(|e| CliError::Io(e.to_string()))?;
    tmp.persist(&target)
        .map_err(|e| CliError::Io(format!("{}: {}", target.display(), e.error)))?;
    Ok(target)
}
