fn main() {
    std::process::exit(multitime::cli::run(std::env::args_os()));
}
