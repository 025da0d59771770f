//! Append-only text cache of computed counts.
//!
//! One entry per line:
//!
//! ```text
//! n=6 k=3 mode=modn reading=circular-word style=one-line engine=oracle count=192 version=0.1.0
//! ```
//!
//! Lines that do not parse are skipped with a warning.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use ksucc::{BigInt, CountStyle, Mode, Reading};

pub const CACHE_ENV: &str = "KSUCC_CACHE";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub n: u32,
    pub k: u32,
    pub mode: Mode,
    pub reading: Reading,
    pub style: CountStyle,
    pub engine: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub fingerprint: Fingerprint,
    pub count: BigInt,
    pub version: String,
}

impl CacheEntry {
    pub fn to_line(&self) -> String {
        let f = &self.fingerprint;
        format!(
            "n={} k={} mode={} reading={} style={} engine={} count={} version={}",
            f.n,
            f.k,
            f.mode.as_str(),
            f.reading.as_str(),
            f.style.as_str(),
            f.engine,
            self.count,
            self.version
        )
    }
}

impl FromStr for CacheEntry {
    type Err = String;

    fn from_str(line: &str) -> Result<Self, String> {
        let fields: HashMap<&str, &str> = line
            .split_whitespace()
            .map(|kv| kv.split_once('=').ok_or_else(|| format!("field `{kv}` has no `=`")))
            .collect::<Result<_, _>>()?;
        let get = |key: &str| fields.get(key).copied().ok_or_else(|| format!("missing `{key}`"));
        let num = |key: &str| -> Result<u32, String> {
            get(key)?.parse().map_err(|_| format!("bad `{key}`"))
        };
        let mode = match get("mode")? {
            "linear" => Mode::Linear,
            "modn" => Mode::ModN,
            other => return Err(format!("bad mode `{other}`")),
        };
        let reading = match get("reading")? {
            "linear-word" => Reading::LinearWord,
            "circular-word" => Reading::CircularWord,
            other => return Err(format!("bad reading `{other}`")),
        };
        let style = match get("style")? {
            "one-line" => CountStyle::OneLine,
            "cyclic" => CountStyle::CyclicClass,
            other => return Err(format!("bad style `{other}`")),
        };
        let count = get("count")?
            .parse::<BigInt>()
            .map_err(|_| "bad `count`".to_string())?;
        Ok(Self {
            fingerprint: Fingerprint {
                n: num("n")?,
                k: num("k")?,
                mode,
                reading,
                style,
                engine: get("engine")?.to_string(),
            },
            count,
            version: get("version")?.to_string(),
        })
    }
}

/// Open cache file, held under an exclusive lock for the life of the value.
pub struct Cache {
    path: PathBuf,
    file: File,
    entries: HashMap<Fingerprint, BigInt>,
}

impl Cache {
    /// Opens (creating if needed) and loads `path`. Corrupt lines are reported
    /// through `warn` and ignored.
    pub fn open(path: &Path, mut warn: impl FnMut(String)) -> io::Result<Self> {
        let mut file = OpenOptions::new()
            .read(true)
            .append(true)
            .create(true)
            .open(path)?;
        file.lock()?;
        file.seek(SeekFrom::Start(0))?;
        let mut entries = HashMap::new();
        for (i, line) in BufReader::new(&file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match line.parse::<CacheEntry>() {
                Ok(e) => {
                    entries.insert(e.fingerprint, e.count);
                }
                Err(why) => warn(format!(
                    "{}:{}: skipping corrupt cache line ({why})",
                    path.display(),
                    i + 1
                )),
            }
        }
        Ok(Self {
            path: path.to_path_buf(),
            file,
            entries,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, fingerprint: &Fingerprint) -> Option<&BigInt> {
        self.entries.get(fingerprint)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, fingerprint: Fingerprint, count: BigInt) -> io::Result<()> {
        let entry = CacheEntry {
            fingerprint,
            count,
            version: env!("CARGO_PKG_VERSION").to_string(),
        };
        writeln!(self.file, "{}", entry.to_line())?;
        self.entries.insert(entry.fingerprint, entry.count);
        Ok(())
    }
}
