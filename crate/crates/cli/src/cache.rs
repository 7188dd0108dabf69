use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

/// Flags that change neither the result nor its formatting.
const IGNORED_FLAGS: [&str; 2] = ["--cache-dir", "--workers"];

/// On-disk cache of command outputs keyed by a content hash of the
/// arguments, the contents of any argument naming a file, and the seed.
pub struct Cache {
    dir: PathBuf,
    key: String,
}

impl Cache {
    pub fn new(dir: &Path, argv: &[String], seed: u64) -> Self {
        let mut hasher = Sha256::new();
        let mut skip_next = false;
        for arg in argv.iter().skip(1) {
            if skip_next {
                skip_next = false;
                continue;
            }
            if IGNORED_FLAGS.iter().any(|f| arg.starts_with(&format!("{f}="))) {
                continue;
            }
            if IGNORED_FLAGS.contains(&arg.as_str()) {
                skip_next = true;
                continue;
            }
            hasher.update(arg.as_bytes());
            hasher.update([0]);
            let p = Path::new(arg);
            if p.is_file() {
                if let Ok(bytes) = fs::read(p) {
                    hasher.update(&bytes);
                    hasher.update([0]);
                }
            }
        }
        hasher.update(seed.to_le_bytes());
        let key = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
        Cache { dir: dir.to_path_buf(), key }
    }

    fn path(&self) -> PathBuf {
        self.dir.join(format!("{}.out", self.key))
    }

    /// The cached `(pass, output)`, if present and readable.
    pub fn load(&self) -> Option<(bool, String)> {
        let text = fs::read_to_string(self.path()).ok()?;
        let (flag, body) = text.split_once('\n')?;
        match flag {
            "pass" => Some((true, body.to_string())),
            "fail" => Some((false, body.to_string())),
            _ => None,
        }
    }

    pub fn store(&self, pass: bool, output: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let flag = if pass { "pass" } else { "fail" };
        fs::write(self.path(), format!("{flag}\n{output}"))
    }
}
