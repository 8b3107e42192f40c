use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Envelope written by every command: the resolved configuration, the
/// payload and the elapsed time. Only `elapsed_ms` varies between runs.
#[derive(Serialize)]
pub struct Report<C: Serialize, P: Serialize> {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: C,
    pub result: P,
    pub elapsed_ms: u128,
}

impl<C: Serialize, P: Serialize> Report<C, P> {
    pub fn new(command: C, result: P, elapsed_ms: u128) -> Self {
        Report { schema_version: SCHEMA_VERSION, tool_version: env!("CARGO_PKG_VERSION"), command, result, elapsed_ms }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports are plain JSON");
        s.push('\n');
        s
    }
}
