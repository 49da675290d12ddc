fn main() {
    std::process::exit(rootlength::cli::run(std::env::args_os()));
}
