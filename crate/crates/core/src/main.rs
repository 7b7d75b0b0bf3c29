use clap::Parser;

use trilemma::cli::{self, Cli};

fn main() {
    cli::init_thread_pool_from_env();
    let cli = Cli::parse();
    std::process::exit(cli::run(cli));
}
