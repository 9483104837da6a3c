fn main() {
    std::process::exit(pentagon_cli::run(std::env::args_os()));
}
