use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use sha2::{Digest, Sha256};

pub const DEFAULT_URL: &str = "https://oeis.org/stripped.gz";

/// Removes the partial download unless disarmed.
struct PartialFile(Option<PathBuf>);

impl Drop for PartialFile {
    fn drop(&mut self) {
        if let Some(p) = self.0.take() {
            let _ = fs::remove_file(p);
        }
    }
}

struct HashingWriter<W> {
    inner: W,
    hasher: Sha256,
    bytes: u64,
}

impl<W: Write> Write for HashingWriter<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.hasher.update(&buf[..n]);
        self.bytes += n as u64;
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

/// Downloads `url` to `dest` via a temporary sibling file, so `dest` only ever
/// holds a complete download. Returns the size and hex sha256.
pub fn fetch(url: &str, dest: &Path) -> Result<(u64, String)> {
    let dir = match dest.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    if !dir.is_dir() {
        bail!("destination directory {} does not exist", dir.display());
    }
    let Some(name) = dest.file_name() else {
        bail!("destination {} has no file name", dest.display());
    };
    let tmp = dir.join(format!(".{}.part", name.to_string_lossy()));

    let response = ureq::get(url).call().with_context(|| format!("GET {url}"))?;
    let mut body = response.into_body().into_reader();

    let mut guard = PartialFile(Some(tmp.clone()));
    let file = File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
    let mut out = HashingWriter {
        inner: BufWriter::new(file),
        hasher: Sha256::new(),
        bytes: 0,
    };
    io::copy(&mut body, &mut out).with_context(|| format!("downloading {url}"))?;
    out.flush()?;
    let digest = out.hasher.finalize();
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    fs::rename(&tmp, dest).with_context(|| format!("moving download to {}", dest.display()))?;
    guard.0 = None;
    Ok((out.bytes, hex))
}
