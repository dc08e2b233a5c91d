fn main() {
    std::process::exit(isan_text::cli::run(std::env::args_os()));
}
