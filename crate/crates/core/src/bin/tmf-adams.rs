fn main() {
    std::process::exit(tmf_adams::cli::run(std::env::args_os()));
}
