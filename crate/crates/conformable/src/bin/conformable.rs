use clap::Parser;
use conformable::cli::{run, Cli};

fn main() {
    // clap exits with code 2 on bad flags
    let cli = Cli::parse();
    match run(&cli) {
        Ok((true, files)) => {
            for f in files {
                println!("{}", f.display());
            }
        }
        Ok((false, _)) => {
            eprintln!("verification failed");
            std::process::exit(1);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}
