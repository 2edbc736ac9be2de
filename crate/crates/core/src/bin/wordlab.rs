use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    match word_order_lab::cli::run(&args, &mut out) {
        Ok(()) => {
            if out.flush().is_err() {
                std::process::exit(2);
            }
        }
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
