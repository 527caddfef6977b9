fn main() {
    std::process::exit(bocs_core::cli::run(std::env::args_os()));
}
