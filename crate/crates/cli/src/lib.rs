//! Analysis pipeline behind the `omrev` command-line tool.

pub mod error;
pub mod input;
pub mod report;
pub mod survey;
pub mod verify;

pub use error::CliError;
pub use input::{load_instance, parse_order};
pub use report::{analyze, AnalysisReport, AnalyzeOptions};
pub use survey::{survey, Family, SurveyReport, SurveyRow};
pub use verify::{verify_entries, Scope, VerifyOutcome};
