#Maybe some tests will be added later