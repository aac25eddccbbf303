use clap::Parser;

fn main() {
    env_logger::init();
    let cli = rft_cli::Cli::parse();
    if let Err(err) = rft_cli::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
