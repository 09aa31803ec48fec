use clap::Parser;

fn main() {
    let cli = activeinfo_cli::Cli::parse();
    if let Err(err) = activeinfo_cli::run(cli) {
        eprintln!("{err}");
        std::process::exit(err.exit_code());
    }
}
