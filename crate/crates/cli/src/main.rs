use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, report) = tropweil_cli::run_command(std::env::args_os());
    if code == 0 {
        print!("{report}");
        let _ = std::io::stdout().flush();
    } else {
        eprint!("{report}");
    }
    ExitCode::from(code as u8)
}
